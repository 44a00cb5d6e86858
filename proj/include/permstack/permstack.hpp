#pragma once

#include "permstack/catalan.hpp"
#include "permstack/clumping.hpp"
#include "permstack/enumerate.hpp"
#include "permstack/errors.hpp"
#include "permstack/literal.hpp"
#include "permstack/movement.hpp"
#include "permstack/pattern.hpp"
#include "permstack/stack_sort.hpp"
#include "permstack/word.hpp"

#include "permstack/dynamics/bijectivity.hpp"
#include "permstack/dynamics/extremal.hpp"
#include "permstack/dynamics/images.hpp"
#include "permstack/dynamics/machine.hpp"
#include "permstack/dynamics/orbits.hpp"
#include "permstack/dynamics/preimages.hpp"
#include "permstack/dynamics/verify.hpp"
