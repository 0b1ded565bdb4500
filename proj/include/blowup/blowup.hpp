#pragma once

#include "blowup/biseries.hpp"
#include "blowup/elementary.hpp"
#include "blowup/errors.hpp"
#include "blowup/generate.hpp"
#include "blowup/golden_check.hpp"
#include "blowup/golden_table.hpp"
#include "blowup/pairing.hpp"
#include "blowup/rational.hpp"
#include "blowup/report.hpp"
#include "blowup/series_json.hpp"
#include "blowup/series_set.hpp"
#include "blowup/tseries.hpp"
#include "blowup/verify.hpp"
#include "blowup/xpoly.hpp"
