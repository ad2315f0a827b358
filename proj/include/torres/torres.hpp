#pragma once

#include "torres/error.hpp"
#include "torres/ring.hpp"
#include "torres/laurent.hpp"
#include "torres/rational_function.hpp"
#include "torres/matrix.hpp"
#include "torres/diagram.hpp"
#include "torres/fox.hpp"
#include "torres/reps.hpp"
#include "torres/torsion.hpp"
