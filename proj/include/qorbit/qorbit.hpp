#pragma once

#include "qorbit/arith.hpp"
#include "qorbit/dynamics.hpp"
#include "qorbit/parallel.hpp"
#include "qorbit/theory.hpp"
