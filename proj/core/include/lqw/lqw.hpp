#pragma once

#include "lqw/error.hpp"
#include "lqw/experiments.hpp"
#include "lqw/export.hpp"
#include "lqw/graph.hpp"
#include "lqw/peak.hpp"
#include "lqw/reduced.hpp"
#include "lqw/walk.hpp"
