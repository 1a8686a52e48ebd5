#ifndef PFREP_PFREP_HPP
#define PFREP_PFREP_HPP

#include "pfrep/error.hpp"
#include "pfrep/io.hpp"
#include "pfrep/pfaffian.hpp"
#include "pfrep/polynomial.hpp"
#include "pfrep/random.hpp"
#include "pfrep/representation.hpp"
#include "pfrep/ring.hpp"
#include "pfrep/ring_spec.hpp"
#include "pfrep/text.hpp"

#endif
