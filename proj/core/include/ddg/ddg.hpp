#pragma once

#include "ddg/config.hpp"
#include "ddg/density.hpp"
#include "ddg/engine.hpp"
#include "ddg/errors.hpp"
#include "ddg/evaluation.hpp"
#include "ddg/global_dynamics.hpp"
#include "ddg/io.hpp"
#include "ddg/local_dynamics.hpp"
#include "ddg/model.hpp"
#include "ddg/random.hpp"
#include "ddg/state.hpp"
