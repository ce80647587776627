#pragma once

#include "resint/field.hpp"
#include "resint/combinatorics.hpp"
#include "resint/bipoly.hpp"
#include "resint/exactla.hpp"
#include "resint/freecomplex.hpp"
#include "resint/en.hpp"
#include "resint/bkm.hpp"
#include "resint/diagonal.hpp"
#include "resint/oracle.hpp"
#include "resint/rees.hpp"
