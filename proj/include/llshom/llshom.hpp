#ifndef LLSHOM_LLSHOM_HPP
#define LLSHOM_LLSHOM_HPP

#include "aux_instance.hpp"
#include "cnf.hpp"
#include "dp.hpp"
#include "error.hpp"
#include "gadgets.hpp"
#include "graph.hpp"
#include "induced.hpp"
#include "instance.hpp"
#include "io.hpp"
#include "isomorphism.hpp"
#include "pattern.hpp"
#include "result.hpp"
#include "solve.hpp"
#include "solver_exact.hpp"
#include "subexp.hpp"
#include "tree_decomposition.hpp"
#include "verifier.hpp"
#include "vertex_set.hpp"

#endif // LLSHOM_LLSHOM_HPP
