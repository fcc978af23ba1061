#pragma once

#include "vlclink/angles.hpp"
#include "vlclink/channel.hpp"
#include "vlclink/csv.hpp"
#include "vlclink/errors.hpp"
#include "vlclink/format.hpp"
#include "vlclink/geometry.hpp"
#include "vlclink/noise.hpp"
#include "vlclink/scenario.hpp"
#include "vlclink/scenario_file.hpp"
