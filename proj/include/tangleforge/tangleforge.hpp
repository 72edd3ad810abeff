#pragma once

#include "report.hpp"
#include "verify.hpp"
