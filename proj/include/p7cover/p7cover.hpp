#pragma once

#include "errors.hpp"
#include "vertex_set.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "induced_paths.hpp"
#include "modular.hpp"
#include "separators.hpp"
#include "pmc.hpp"
#include "covering.hpp"
#include "families.hpp"
#include "oracle.hpp"
#include "verify.hpp"
