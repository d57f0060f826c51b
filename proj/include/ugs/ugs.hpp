#pragma once

#include "ugs/admission.hpp"
#include "ugs/capacity.hpp"
#include "ugs/dynamics.hpp"
#include "ugs/errors.hpp"
#include "ugs/flow.hpp"
#include "ugs/grid.hpp"
#include "ugs/metrics.hpp"
#include "ugs/resource.hpp"
#include "ugs/scenario.hpp"
#include "ugs/schedulers/common.hpp"
#include "ugs/schedulers/edf.hpp"
#include "ugs/schedulers/eqa.hpp"
#include "ugs/schedulers/swim.hpp"
#include "ugs/trials.hpp"
