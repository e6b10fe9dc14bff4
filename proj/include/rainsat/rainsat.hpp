#pragma once

#include "colored_graph.hpp"
#include "constructions.hpp"
#include "designs.hpp"
#include "error.hpp"
#include "graph_io.hpp"
#include "pattern_spec.hpp"
#include "patterns.hpp"
#include "rainbow_embed.hpp"
#include "saturation.hpp"
#include "structure.hpp"
