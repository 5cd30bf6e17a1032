#pragma once

// Umbrella header for the EBB reference implementation.

#include "ebb/codec.hpp"      // IWYU pragma: export
#include "ebb/ingest.hpp"     // IWYU pragma: export
#include "ebb/record.hpp"     // IWYU pragma: export
#include "ebb/result.hpp"     // IWYU pragma: export
#include "ebb/ringstore.hpp"  // IWYU pragma: export
#include "ebb/simbot.hpp"     // IWYU pragma: export
