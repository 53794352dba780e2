#pragma once

#include "cyvol/ambient.hpp"
#include "cyvol/cones.hpp"
#include "cyvol/error.hpp"
#include "cyvol/linalg.hpp"
#include "cyvol/lorentz.hpp"
#include "cyvol/quadratic.hpp"
#include "cyvol/rational.hpp"
#include "cyvol/scalar.hpp"
#include "cyvol/series.hpp"
#include "cyvol/volume.hpp"
#include "cyvol/weyl.hpp"
