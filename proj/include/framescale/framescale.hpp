#pragma once

#include "framescale/error.hpp"
#include "framescale/index_set.hpp"
#include "framescale/numerics.hpp"
#include "framescale/frame.hpp"
#include "framescale/scaling.hpp"
#include "framescale/structure.hpp"
#include "framescale/io.hpp"
