#pragma once

#include "quadfield/quad.hpp"
#include "quadfield/canonical.hpp"
#include "quadfield/elementary.hpp"
#include "quadfield/calculus.hpp"
#include "quadfield/polynomial.hpp"
#include "quadfield/matrix.hpp"
