#pragma once

// single include for the whole toolkit

#include "lsa/errors.hpp"
#include "lsa/scalar.hpp"
#include "lsa/matrix.hpp"
#include "lsa/subspace.hpp"
#include "lsa/polynomial.hpp"
#include "lsa/mpoly.hpp"
#include "lsa/spectral.hpp"
#include "lsa/algebra.hpp"
#include "lsa/serialization.hpp"
#include "lsa/catalog.hpp"
#include "lsa/completeness.hpp"
#include "lsa/decomposition.hpp"
#include "lsa/ideals.hpp"
#include "lsa/root_graph.hpp"
#include "lsa/classification.hpp"
