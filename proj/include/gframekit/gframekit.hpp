#pragma once

// Umbrella header for the g-frame toolkit.

#include "gframekit/classify.hpp"
#include "gframekit/complex_matrix.hpp"
#include "gframekit/duality.hpp"
#include "gframekit/errors.hpp"
#include "gframekit/excess.hpp"
#include "gframekit/generators.hpp"
#include "gframekit/gframe.hpp"
#include "gframekit/induced.hpp"
#include "gframekit/linalg.hpp"
#include "gframekit/resolution.hpp"
#include "gframekit/rng.hpp"
#include "gframekit/serialize.hpp"
#include "gframekit/splitting.hpp"
