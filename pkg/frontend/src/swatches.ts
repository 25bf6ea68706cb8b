// Fixed board palette: a colorblind-safe qualitative scheme (Tol's muted
// ten).  Color numbers are always displayed next to the swatch, so the hue
// is never the only channel.  Palettes larger than the list wrap around,
// which the numeric labels keep unambiguous.

const SWATCHES = [
  "#88ccee", // 1 light blue
  "#cc6677", // 2 rose
  "#ddcc77", // 3 sand
  "#117733", // 4 green
  "#332288", // 5 indigo
  "#aa4499", // 6 purple
  "#44aa99", // 7 teal
  "#999933", // 8 olive
  "#882255", // 9 wine
  "#dddddd", // 10 pale grey
];

export const SWATCH_COUNT = SWATCHES.length;

/** Fill color for a 1-based game color. */
export function swatchColor(color: number): string {
  return SWATCHES[(color - 1) % SWATCHES.length];
}

/** Black or white, whichever reads against the swatch. */
export function swatchTextColor(color: number): string {
  const hex = swatchColor(color);
  const r = parseInt(hex.slice(1, 3), 16);
  const g = parseInt(hex.slice(3, 5), 16);
  const b = parseInt(hex.slice(5, 7), 16);
  // relative-luminance shortcut is plenty for ten fixed hues
  return 0.299 * r + 0.587 * g + 0.114 * b > 140 ? "#1c1c1c" : "#ffffff";
}
