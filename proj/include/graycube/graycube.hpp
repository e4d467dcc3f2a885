#pragma once

#include "graycube/chain.hpp"
#include "graycube/complex.hpp"
#include "graycube/constructions.hpp"
#include "graycube/error.hpp"
#include "graycube/ids.hpp"
#include "graycube/io.hpp"
#include "graycube/isomorphism.hpp"
#include "graycube/morphism.hpp"
#include "graycube/pushout.hpp"
#include "graycube/realization.hpp"
#include "graycube/retractions.hpp"
#include "graycube/sections.hpp"
#include "graycube/solver.hpp"
#include "graycube/theta.hpp"
