#ifndef ORTHOKIT_ORTHOKIT_HPP
#define ORTHOKIT_ORTHOKIT_HPP

// Umbrella header: everything except io.hpp, which pulls in the vendored
// JSON library and is only needed by code touching map files.

#include "orthokit/classify.hpp"
#include "orthokit/core.hpp"
#include "orthokit/decomp.hpp"
#include "orthokit/errors.hpp"
#include "orthokit/ortho.hpp"
#include "orthokit/rng.hpp"
#include "orthokit/synth.hpp"
#include "orthokit/typing.hpp"
#include "orthokit/version.hpp"

#endif  // ORTHOKIT_ORTHOKIT_HPP
