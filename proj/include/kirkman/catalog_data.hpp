#pragma once

// Embedded text resources for the catalog, parsed at load time.

namespace kirkman::catalog_data {

extern const char* const kKts9;
extern const char* const kKts15;
extern const char* const kKts9Colour3x3;
extern const char* const kKts9Colour234;
extern const char* const kKts9Colour144;
extern const char* const kKts15Rainbow;
extern const char* const kSigma21;
extern const char* const kSigma33;
extern const char* const kSigma39;
extern const char* const kSigma57;
extern const char* const kSigma69;
extern const char* const kTv33;
extern const char* const kRot33;
extern const char* const kQ13;
extern const char* const kGdd44;
extern const char* const kKq13Colouring;

}  // namespace kirkman::catalog_data
