// Compares the serial reference bracket against the OpenMP kernel on
// large random elements and checks they agree term for term.

#include <chrono>
#include <iostream>
#include <random>

#include "lieexp/bracket.hpp"
#include "lieexp/window.hpp"

using namespace lieexp;
using Clock = std::chrono::steady_clock;

namespace {

Element randomElement(const Window& window, std::mt19937_64& rng, size_t terms) {
  std::uniform_int_distribution<size_t> pick(0, window.size() - 1);
  std::uniform_int_distribution<int> coeff(1, 9);
  std::vector<Monomial> raw;
  for (size_t i = 0; i < terms; ++i) {
    Monomial m = window.basis()[pick(rng)];
    m.coeff = coeff(rng);
    raw.push_back(std::move(m));
  }
  return normalize(std::move(raw), window.signature());
}

double run(const char* label, Element (*fn)(const Element&, const Element&),
           const Element& a, const Element& b, const Element* reference) {
  auto start = Clock::now();
  Element r = fn(a, b);
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  std::cout << label << ": " << ms << " ms, " << r.size() << " terms\n";
  if (reference && !(r == *reference)) {
    std::cerr << "MISMATCH between serial and parallel results\n";
    std::exit(1);
  }
  return ms;
}

} // namespace

int main(int argc, char** argv) {
  size_t terms = argc > 1 ? (size_t)std::atoll(argv[1]) : 600;
  std::mt19937_64 rng(12345);

  auto sig = AlgebraSignature::parse("H(2,2)");
  Window window(sig, TruncationCaps::forSig(*sig, 2, 1));
  Element a = randomElement(window, rng, terms);
  Element b = randomElement(window, rng, terms);
  std::cout << "operands: " << a.size() << " x " << b.size() << " terms ("
            << sig->name() << ")\n";

  bracketParallelThreshold = ~size_t(0); // force serial path
  auto t0 = Clock::now();
  Element serial = bracketSerial(a, b);
  double serialMs = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  std::cout << "serial reference: " << serialMs << " ms, " << serial.size()
            << " terms\n";

  bracketParallelThreshold = 256;
  run("openmp kernel  ", bracket, a, b, &serial);
  return 0;
}
