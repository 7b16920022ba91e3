#pragma once

#include "skewpat/avoid213.hpp"
#include "skewpat/good.hpp"
#include "skewpat/rect.hpp"
#include "skewpat/slide.hpp"
