#pragma once

#include "lqres/corpus.hpp"
#include "lqres/errors.hpp"
#include "lqres/field.hpp"
#include "lqres/graded.hpp"
#include "lqres/ideal.hpp"
#include "lqres/io.hpp"
#include "lqres/matrix.hpp"
#include "lqres/monomial.hpp"
#include "lqres/polynomial.hpp"
#include "lqres/resolution.hpp"
#include "lqres/verify.hpp"
