#pragma once

// Aerial base station modeling toolkit: platform power, payload power,
// solar harvesting, endurance, air-to-ground coverage and network
// dimensioning, plus scenario orchestration.

#include "absim/channel.hpp"
#include "absim/constants.hpp"
#include "absim/coverage.hpp"
#include "absim/defaults.hpp"
#include "absim/dimensioning.hpp"
#include "absim/endurance.hpp"
#include "absim/errors.hpp"
#include "absim/payload.hpp"
#include "absim/platform.hpp"
#include "absim/report.hpp"
#include "absim/reproduce.hpp"
#include "absim/rng.hpp"
#include "absim/run.hpp"
#include "absim/scenario.hpp"
#include "absim/solar.hpp"
