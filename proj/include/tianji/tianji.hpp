#pragma once

#include "tianji/eulerian.hpp"
#include "tianji/exact.hpp"
#include "tianji/racing.hpp"
#include "tianji/report.hpp"
