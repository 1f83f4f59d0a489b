// frieze.hpp
//
// Umbrella header for the whole library.
#pragma once

#include "frieze/algebra.hpp"
#include "frieze/continuant.hpp"
#include "frieze/cyclic.hpp"
#include "frieze/deformation.hpp"
#include "frieze/errors.hpp"
#include "frieze/geometry.hpp"
#include "frieze/hill.hpp"
#include "frieze/pattern.hpp"
#include "frieze/rational.hpp"
#include "frieze/search.hpp"
#include "frieze/sign_analysis.hpp"
#include "frieze/triangulation.hpp"
