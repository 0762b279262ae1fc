#pragma once

#include "character.hpp"
#include "classification.hpp"
#include "errors.hpp"
#include "ext_one.hpp"
#include "g1_cohomology.hpp"
#include "prime.hpp"
#include "spectral.hpp"
#include "weight.hpp"
