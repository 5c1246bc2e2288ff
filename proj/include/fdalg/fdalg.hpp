#pragma once

#include "fdalg/error.hpp"
#include "fdalg/field.hpp"
#include "fdalg/linalg.hpp"
#include "fdalg/algebra.hpp"
#include "fdalg/builtin.hpp"
#include "fdalg/operator.hpp"
#include "fdalg/text.hpp"
