/**
 * Umbrella header for the whole library.
 */

#ifndef TOPO_TOPO_HPP
#define TOPO_TOPO_HPP

#define TOPO_VERSION "0.1.0"

#include "topo/chain_complex.hpp"
#include "topo/checks.hpp"
#include "topo/delta_set.hpp"
#include "topo/errors.hpp"
#include "topo/expression.hpp"
#include "topo/finite_group.hpp"
#include "topo/group_action.hpp"
#include "topo/int_matrix.hpp"
#include "topo/json_io.hpp"
#include "topo/smith.hpp"
#include "topo/spaces.hpp"

#endif // TOPO_TOPO_HPP
