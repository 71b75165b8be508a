/**
 * Presentation formatting. The raw service numbers ride along in
 * data-exact attributes; these helpers only round for display.
 */

export function pct(value: number): string {
  return `${(value * 100).toFixed(2)}%`;
}

export function fixed(value: number, digits = 2): string {
  return value.toFixed(digits);
}

/** Escape text destined for HTML or SVG markup. */
export function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
