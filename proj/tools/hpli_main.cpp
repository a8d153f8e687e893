#include <cstdio>

int main() {
  std::puts("hpli: not wired up yet");
  return 2;
}
