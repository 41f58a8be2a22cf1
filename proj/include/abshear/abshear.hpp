#pragma once

#include "abshear/acceptance.hpp"
#include "abshear/config.hpp"
#include "abshear/constants.hpp"
#include "abshear/decomposition.hpp"
#include "abshear/errors.hpp"
#include "abshear/fields.hpp"
#include "abshear/figures.hpp"
#include "abshear/forces.hpp"
#include "abshear/geometry.hpp"
#include "abshear/numerics.hpp"
#include "abshear/phase.hpp"
#include "abshear/streamline.hpp"
