// tools/uen.cc

// Copyright 2026  The uen authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

// uen: simulate, featurize, train, enhance and score.
//
// Usage: uen <command> [--config FILE] --seed N [--set key=value]...
//            [--jobs N] [--run-dir DIR]

#include <iostream>

#include "uen/cli/commands.h"

int main(int argc, char *argv[]) {
  return uen::RunCli(argc, argv, std::cout, std::cerr);
}
