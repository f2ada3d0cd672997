#pragma once

#include "conlap/complex.hpp"
#include "conlap/energy.hpp"
#include "conlap/facet_io.hpp"
#include "conlap/families.hpp"
#include "conlap/fixtures.hpp"
#include "conlap/graph.hpp"
#include "conlap/homotopy.hpp"
#include "conlap/incidence.hpp"
#include "conlap/label.hpp"
#include "conlap/linalg.hpp"
#include "conlap/morse.hpp"
#include "conlap/polynomial.hpp"
#include "conlap/ring.hpp"
#include "conlap/ring_parser.hpp"
