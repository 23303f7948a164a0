#pragma once

// Betti numbers of letterplace ideals L(n,P) of finite posets:
// a Hochster-formula oracle, a strand engine driven by the
// join/suspension reductions, and a recursion for rooted forests.

#include "letterplace/betti_table.hpp"
#include "letterplace/check.hpp"
#include "letterplace/classify.hpp"
#include "letterplace/field.hpp"
#include "letterplace/guards.hpp"
#include "letterplace/hochster.hpp"
#include "letterplace/homology.hpp"
#include "letterplace/hpoly.hpp"
#include "letterplace/ideals.hpp"
#include "letterplace/multidegree.hpp"
#include "letterplace/poset.hpp"
#include "letterplace/render.hpp"
#include "letterplace/scomplex.hpp"
#include "letterplace/strand.hpp"
#include "letterplace/tree.hpp"
