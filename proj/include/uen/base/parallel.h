// uen/base/parallel.h

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

#ifndef UEN_BASE_PARALLEL_H_
#define UEN_BASE_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace uen {

// Calls fn(i) for i in [0, n) on up to `jobs` threads.  The first exception
// thrown by any call is rethrown after all threads finish; remaining items
// are skipped once one has failed.
template <typename Fn>
void ParallelFor(int64_t n, int jobs, Fn fn) {
  jobs = static_cast<int>(std::clamp<int64_t>(jobs, 1, std::max<int64_t>(n, 1)));
  if (jobs == 1) {
    for (int64_t i = 0; i < n; i++) fn(i);
    return;
  }
  std::atomic<int64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex mu;
  std::vector<std::thread> threads;
  for (int j = 0; j < jobs; j++) {
    threads.emplace_back([&] {
      for (int64_t i; !failed && (i = next++) < n;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!error) error = std::current_exception();
          failed = true;
        }
      }
    });
  }
  for (std::thread &t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace uen

#endif  // UEN_BASE_PARALLEL_H_
