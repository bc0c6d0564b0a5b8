#pragma once

#include "statechrome/canonical.hpp"
#include "statechrome/chromatic.hpp"
#include "statechrome/chromhom.hpp"
#include "statechrome/core.hpp"
#include "statechrome/diagram.hpp"
#include "statechrome/extremal.hpp"
#include "statechrome/girth.hpp"
#include "statechrome/homology.hpp"
#include "statechrome/multigraph.hpp"
#include "statechrome/polynomial.hpp"
#include "statechrome/smith.hpp"
