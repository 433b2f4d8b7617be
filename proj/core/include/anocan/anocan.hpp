#pragma once

#include "anocan/analysis.hpp"
#include "anocan/bigint.hpp"
#include "anocan/digits.hpp"
#include "anocan/enumeration.hpp"
#include "anocan/generator.hpp"
#include "anocan/predicate.hpp"
