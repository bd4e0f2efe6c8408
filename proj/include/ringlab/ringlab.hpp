#pragma once

#include "cohn.hpp"
#include "core.hpp"
#include "expr.hpp"
#include "extension.hpp"
#include "ideal.hpp"
#include "lattice.hpp"
#include "morphism.hpp"
#include "poly.hpp"
#include "ring.hpp"
#include "suite.hpp"
