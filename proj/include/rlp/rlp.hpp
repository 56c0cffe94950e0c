#ifndef RLP_RLP_HPP
#define RLP_RLP_HPP

// Umbrella header: exact rational arithmetic, lattice polytopes with facet
// presentations and primitive collections, Horn pairs, multinomial staged
// trees with closed-form maximum likelihood, and the 2D/3D model families.

#include "rlp/errors.hpp"
#include "rlp/families.hpp"
#include "rlp/horn.hpp"
#include "rlp/json_io.hpp"
#include "rlp/matrix.hpp"
#include "rlp/mpoly.hpp"
#include "rlp/oracle.hpp"
#include "rlp/polytope.hpp"
#include "rlp/rational.hpp"
#include "rlp/rng.hpp"
#include "rlp/staged_tree.hpp"
#include "rlp/tree_geometry.hpp"

#endif  // RLP_RLP_HPP
