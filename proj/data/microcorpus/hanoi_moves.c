int hanoi_moves(int disks) {
  if (disks <= 0)
    return 0;
  return 2 * hanoi_moves(disks - 1) + 1;
}
