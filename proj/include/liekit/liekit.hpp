#pragma once

#include "liekit/affine_series.hpp"
#include "liekit/bench.hpp"
#include "liekit/branching.hpp"
#include "liekit/errors.hpp"
#include "liekit/formal_element.hpp"
#include "liekit/modules.hpp"
#include "liekit/parse.hpp"
#include "liekit/rational.hpp"
#include "liekit/root_system.hpp"
#include "liekit/serialize.hpp"
#include "liekit/weight.hpp"
#include "liekit/weyl.hpp"
