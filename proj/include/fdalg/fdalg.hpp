#pragma once

#include "fdalg/rational.hpp"
#include "fdalg/linalg.hpp"
#include "fdalg/polynomial.hpp"
#include "fdalg/algebra.hpp"
#include "fdalg/linfunc.hpp"
#include "fdalg/structure.hpp"
#include "fdalg/amodule.hpp"
#include "fdalg/slf.hpp"
#include "fdalg/pseudotrace.hpp"
#include "fdalg/zoo.hpp"
