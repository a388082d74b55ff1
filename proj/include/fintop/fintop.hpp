#pragma once

#include "fintop/aut.hpp"
#include "fintop/bitset.hpp"
#include "fintop/canon.hpp"
#include "fintop/complex.hpp"
#include "fintop/enumerate.hpp"
#include "fintop/error.hpp"
#include "fintop/graph.hpp"
#include "fintop/group.hpp"
#include "fintop/homotopy.hpp"
#include "fintop/json_io.hpp"
#include "fintop/mcg.hpp"
#include "fintop/models.hpp"
#include "fintop/perm.hpp"
#include "fintop/poset_invariants.hpp"
#include "fintop/preorder.hpp"
#include "fintop/realize.hpp"
#include "fintop/space.hpp"
#include "fintop/sweep.hpp"
