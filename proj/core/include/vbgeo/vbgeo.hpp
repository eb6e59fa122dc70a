#pragma once

#include "vbgeo/bundle.hpp"
#include "vbgeo/chart.hpp"
#include "vbgeo/curvature.hpp"
#include "vbgeo/errors.hpp"
#include "vbgeo/expr.hpp"
#include "vbgeo/finite_difference.hpp"
#include "vbgeo/four_manifold.hpp"
#include "vbgeo/geodesics.hpp"
#include "vbgeo/hermitian.hpp"
#include "vbgeo/holonomy.hpp"
#include "vbgeo/total_space.hpp"
#include "vbgeo/types.hpp"
#include "vbgeo/weights.hpp"
