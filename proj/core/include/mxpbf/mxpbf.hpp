#pragma once

#include "mxpbf/baselines.hpp"
#include "mxpbf/cholesky.hpp"
#include "mxpbf/column_stats.hpp"
#include "mxpbf/cov_test.hpp"
#include "mxpbf/csv.hpp"
#include "mxpbf/errors.hpp"
#include "mxpbf/harness.hpp"
#include "mxpbf/matrix.hpp"
#include "mxpbf/mean_test.hpp"
#include "mxpbf/mvn.hpp"
#include "mxpbf/parallel.hpp"
#include "mxpbf/report_json.hpp"
#include "mxpbf/rng.hpp"
#include "mxpbf/roc.hpp"
#include "mxpbf/scenarios.hpp"
#include "mxpbf/special_functions.hpp"
