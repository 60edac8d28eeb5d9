#pragma once

// Convenience umbrella for the whole library.

#include "ucf/analysis.hpp"
#include "ucf/classification.hpp"
#include "ucf/closure.hpp"
#include "ucf/constructions.hpp"
#include "ucf/enumerate.hpp"
#include "ucf/io.hpp"
#include "ucf/relative.hpp"
#include "ucf/set_family.hpp"
