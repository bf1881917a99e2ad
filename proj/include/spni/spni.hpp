#ifndef SPNI_SPNI_HPP
#define SPNI_SPNI_HPP

#include "spni/errors.hpp"
#include "spni/point.hpp"
#include "spni/instance.hpp"
#include "spni/shortest_path.hpp"
#include "spni/pareto.hpp"
#include "spni/sp_decompose.hpp"
#include "spni/dp_solver.hpp"
#include "spni/oracle.hpp"
#include "spni/random.hpp"
#include "spni/instances.hpp"
#include "spni/io.hpp"

#endif // SPNI_SPNI_HPP
