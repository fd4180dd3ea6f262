#pragma once

#include "skewgb/algebra.hpp"
#include "skewgb/error.hpp"
#include "skewgb/exponent.hpp"
#include "skewgb/field.hpp"
#include "skewgb/freemod.hpp"
#include "skewgb/graded.hpp"
#include "skewgb/groebner.hpp"
#include "skewgb/orders.hpp"
#include "skewgb/parser.hpp"
#include "skewgb/printer.hpp"
