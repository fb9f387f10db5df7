#pragma once

#include "critindep/bench.hpp"
#include "critindep/critical.hpp"
#include "critindep/decomposition.hpp"
#include "critindep/exact_mis.hpp"
#include "critindep/generators.hpp"
#include "critindep/graph.hpp"
#include "critindep/hash.hpp"
#include "critindep/invariants.hpp"
#include "critindep/io.hpp"
#include "critindep/matching.hpp"
#include "critindep/oracle.hpp"
#include "critindep/report.hpp"
#include "critindep/report_json.hpp"
