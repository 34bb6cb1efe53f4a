#pragma once

#include "bounds.hpp"
#include "error.hpp"
#include "exact.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "indices.hpp"
#include "report_io.hpp"
#include "steiner.hpp"
#include "verifier.hpp"
