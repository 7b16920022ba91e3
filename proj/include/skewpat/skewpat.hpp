#pragma once

#include "skewpat/bigcount.hpp"
#include "skewpat/bijections.hpp"
#include "skewpat/core.hpp"
#include "skewpat/counting.hpp"
#include "skewpat/enumerate.hpp"
#include "skewpat/io.hpp"
#include "skewpat/rsk.hpp"
#include "skewpat/verify.hpp"
