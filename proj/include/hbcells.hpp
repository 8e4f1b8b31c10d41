#pragma once

#include "hbcells/errors.hpp"
#include "hbcells/rational.hpp"
#include "hbcells/variables.hpp"
#include "hbcells/monomial.hpp"
#include "hbcells/polynomial.hpp"
#include "hbcells/text.hpp"
#include "hbcells/poly_matrix.hpp"
#include "hbcells/resultant.hpp"
#include "hbcells/cocharacter.hpp"
#include "hbcells/groebner.hpp"
#include "hbcells/staircase.hpp"
#include "hbcells/spread_out.hpp"
#include "hbcells/cells.hpp"
#include "hbcells/tangent.hpp"
