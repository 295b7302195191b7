#pragma once

#include "hvmdp/discounted_mdp.hpp"
#include "hvmdp/errors.hpp"
#include "hvmdp/hv_transform.hpp"
#include "hvmdp/hvag_transform.hpp"
#include "hvmdp/instance_io.hpp"
#include "hvmdp/linalg.hpp"
#include "hvmdp/lp.hpp"
#include "hvmdp/model.hpp"
#include "hvmdp/oracle.hpp"
#include "hvmdp/random_instances.hpp"
#include "hvmdp/solver.hpp"
#include "hvmdp/transience.hpp"
