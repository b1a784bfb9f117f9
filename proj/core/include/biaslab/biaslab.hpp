#pragma once

#include "biaslab/agent.hpp"
#include "biaslab/belief.hpp"
#include "biaslab/bias_model.hpp"
#include "biaslab/design.hpp"
#include "biaslab/detector.hpp"
#include "biaslab/error.hpp"
#include "biaslab/general_bias.hpp"
#include "biaslab/geometry.hpp"
#include "biaslab/instance.hpp"
#include "biaslab/lp.hpp"
#include "biaslab/random.hpp"
#include "biaslab/scheme.hpp"
