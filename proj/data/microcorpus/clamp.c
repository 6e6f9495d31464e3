int clamp(int x, int limit) {
  int out;
  if (x < -limit) {
    out = -limit;
  } else if (x > limit) {
    out = limit;
  } else {
    out = x;
  }
  return out;
}
