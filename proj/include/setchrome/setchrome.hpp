#pragma once

#include "setchrome/colouring.hpp"
#include "setchrome/error.hpp"
#include "setchrome/exact.hpp"
#include "setchrome/format.hpp"
#include "setchrome/graph.hpp"
#include "setchrome/harness.hpp"
#include "setchrome/io.hpp"
#include "setchrome/prob.hpp"
#include "setchrome/random.hpp"
#include "setchrome/theory.hpp"
