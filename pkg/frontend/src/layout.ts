/**
 * Hand-authored schematic coordinates echoing the Green Line's shape:
 * western branch tips at the lower left, the trunk climbing northeast
 * through downtown, and the two northern tips past Lechmere. Positions
 * are fixed so screenshots are reproducible.
 */

export const VIEW_WIDTH = 960;
export const VIEW_HEIGHT = 540;

export interface Point {
  x: number;
  y: number;
}

export const SCHEMATIC: ReadonlyMap<string, Point> = new Map([
  ["boston-college", { x: 60, y: 440 }],
  ["cleveland-circle", { x: 95, y: 505 }],
  ["riverside", { x: 60, y: 350 }],
  ["brookline-village", { x: 160, y: 395 }],
  ["kenmore", { x: 240, y: 430 }],
  ["hynes", { x: 320, y: 400 }],
  ["copley", { x: 395, y: 365 }],
  ["heath-street", { x: 345, y: 490 }],
  ["arlington", { x: 465, y: 330 }],
  ["boylston", { x: 530, y: 295 }],
  ["park-street", { x: 590, y: 258 }],
  ["government-center", { x: 650, y: 220 }],
  ["haymarket", { x: 705, y: 180 }],
  ["north-station", { x: 765, y: 140 }],
  ["lechmere", { x: 830, y: 100 }],
  ["union-square", { x: 770, y: 40 }],
  ["medford-tufts", { x: 905, y: 45 }],
]);

/** Position for a station; unknown ids park in a corner rather than crash. */
export function positionOf(id: string): Point {
  return SCHEMATIC.get(id) ?? { x: 30, y: 30 };
}
