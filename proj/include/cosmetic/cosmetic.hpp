#pragma once

#include "cosmetic/dedekind.hpp"
#include "cosmetic/hf_cone.hpp"
#include "cosmetic/knot_algebra.hpp"
#include "cosmetic/knot_io.hpp"
#include "cosmetic/obstruction.hpp"
#include "cosmetic/rational.hpp"
#include "cosmetic/surgery.hpp"
