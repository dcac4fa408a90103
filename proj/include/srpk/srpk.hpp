#pragma once

#include "srpk/closure.hpp"
#include "srpk/counting.hpp"
#include "srpk/element_io.hpp"
#include "srpk/error.hpp"
#include "srpk/graph.hpp"
#include "srpk/interval.hpp"
#include "srpk/iterative.hpp"
#include "srpk/ldm.hpp"
#include "srpk/matrix.hpp"
#include "srpk/matrix_io.hpp"
#include "srpk/random.hpp"
#include "srpk/semiring.hpp"
#include "srpk/semirings.hpp"
#include "srpk/solve.hpp"
#include "srpk/toeplitz.hpp"
#include "srpk/triangular.hpp"
