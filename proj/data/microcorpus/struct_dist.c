int struct_dist(int x, int y) {
  struct point { int x; int y; } a = {1, 2}, b;
  b.x = x;
  b.y = y;
  int dx = b.x - a.x, dy = b.y - a.y;
  return dx * dx + dy * dy;
}
