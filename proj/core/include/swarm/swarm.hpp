#pragma once

#include "swarm/delay_bound.hpp"
#include "swarm/delay_process.hpp"
#include "swarm/error.hpp"
#include "swarm/formation.hpp"
#include "swarm/gains.hpp"
#include "swarm/integrator.hpp"
#include "swarm/joint.hpp"
#include "swarm/linalg.hpp"
#include "swarm/montecarlo.hpp"
#include "swarm/parallel.hpp"
#include "swarm/quadrature.hpp"
#include "swarm/random.hpp"
#include "swarm/system_matrices.hpp"
#include "swarm/wireless.hpp"
