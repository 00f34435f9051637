#pragma once

#include "core.hpp"
#include "detect.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "random.hpp"
#include "reach.hpp"
#include "reduce.hpp"
#include "temporize.hpp"
