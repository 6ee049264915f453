#pragma once

#include "rees/errors.hpp"
#include "rees/scroll.hpp"
#include "rees/coeff.hpp"
#include "rees/polynomial.hpp"
#include "rees/term_order.hpp"
#include "rees/relations.hpp"
#include "rees/groebner.hpp"
#include "rees/complex.hpp"
#include "rees/hilbert.hpp"
#include "rees/verification.hpp"
#include "rees/json_io.hpp"
