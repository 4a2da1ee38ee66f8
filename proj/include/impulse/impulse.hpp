#pragma once

#include "impulse/bench.hpp"
#include "impulse/error.hpp"
#include "impulse/filters.hpp"
#include "impulse/image.hpp"
#include "impulse/metrics.hpp"
#include "impulse/noise.hpp"
#include "impulse/pgm.hpp"
#include "impulse/synthetic.hpp"
