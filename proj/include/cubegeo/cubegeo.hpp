#pragma once

#include "cubegeo/colourings.hpp"
#include "cubegeo/core.hpp"
#include "cubegeo/generate.hpp"
#include "cubegeo/geodesics.hpp"
#include "cubegeo/io.hpp"
#include "cubegeo/parallel.hpp"
#include "cubegeo/rng.hpp"
#include "cubegeo/search.hpp"
#include "cubegeo/setfamilies.hpp"
#include "cubegeo/verify.hpp"
