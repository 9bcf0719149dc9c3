import type { ElementDoc, Position, StateDocument, Viewport } from "./protocol.js";

// Element footprints and pin placement, in world units (pixels at zoom 1).
// `position` is the centre of the body; pins sit on the left and right
// edges with a short stub so wires do not touch the outline.

export const GATE_WIDTH = 72;
export const GATE_HEIGHT = 52;
export const SOURCE_WIDTH = 56;
export const SOURCE_HEIGHT = 36;
export const INDICATOR_SIZE = 44;
export const PIN_STUB = 14;
export const PIN_HIT_RADIUS = 12;

export interface Bounds {
    x: number;
    y: number;
    width: number;
    height: number;
}

export interface PinPoint {
    pin: string;
    x: number;
    y: number;
    direction: "in" | "out";
}

export type HitTarget =
    | { type: "pin"; element: number; pin: string }
    | { type: "element"; element: number }
    | null;

export function inputCount(el: ElementDoc): number {
    if (el.kind !== "gate") {
        return el.kind === "output" ? 1 : 0;
    }
    const gate = (el.params as { gate: string }).gate;
    return gate === "not" || gate === "buf" ? 1 : 2;
}

export function outputCount(el: ElementDoc): number {
    return el.kind === "output" ? 0 : 1;
}

export function elementBounds(el: ElementDoc): Bounds {
    let width = GATE_WIDTH;
    let height = GATE_HEIGHT;
    if (el.kind === "input") {
        width = SOURCE_WIDTH;
        height = SOURCE_HEIGHT;
    } else if (el.kind === "output") {
        width = INDICATOR_SIZE;
        height = INDICATOR_SIZE;
    }
    return {
        x: el.position.x - width / 2,
        y: el.position.y - height / 2,
        width,
        height,
    };
}

export function pinPoints(el: ElementDoc): PinPoint[] {
    const bounds = elementBounds(el);
    const points: PinPoint[] = [];
    const nIn = inputCount(el);
    for (let i = 0; i < nIn; i++) {
        // Spread input pins evenly down the left edge.
        const y = bounds.y + (bounds.height * (i + 1)) / (nIn + 1);
        points.push({ pin: `in${i}`, x: bounds.x - PIN_STUB, y, direction: "in" });
    }
    if (outputCount(el) > 0) {
        points.push({
            pin: "out0",
            x: bounds.x + bounds.width + PIN_STUB,
            y: bounds.y + bounds.height / 2,
            direction: "out",
        });
    }
    return points;
}

export function pinPoint(el: ElementDoc, pin: string): PinPoint | null {
    for (const point of pinPoints(el)) {
        if (point.pin === pin) {
            return point;
        }
    }
    return null;
}

// Topmost element wins, and pins win over bodies: the pin hit circles
// overlap the neighbouring body area and a wiring tap is the more
// deliberate gesture of the two.
export function hitTest(state: StateDocument, wx: number, wy: number): HitTarget {
    const elements = state.elements;
    for (let i = elements.length - 1; i >= 0; i--) {
        const el = elements[i]!;
        for (const point of pinPoints(el)) {
            const dx = wx - point.x;
            const dy = wy - point.y;
            if (dx * dx + dy * dy <= PIN_HIT_RADIUS * PIN_HIT_RADIUS) {
                return { type: "pin", element: el.id, pin: point.pin };
            }
        }
    }
    for (let i = elements.length - 1; i >= 0; i--) {
        const el = elements[i]!;
        const b = elementBounds(el);
        if (wx >= b.x && wx <= b.x + b.width && wy >= b.y && wy <= b.y + b.height) {
            return { type: "element", element: el.id };
        }
    }
    return null;
}

// Orthogonal wire route from an output pin to an input pin. The common
// case is a forward run broken at the midpoint; when the target sits
// behind the source the wire loops around through a vertical detour.
export function wireRoute(from: PinPoint, to: PinPoint): Position[] {
    const clearance = 18;
    if (to.x - from.x >= 2 * clearance) {
        const mx = (from.x + to.x) / 2;
        return [
            { x: from.x, y: from.y },
            { x: mx, y: from.y },
            { x: mx, y: to.y },
            { x: to.x, y: to.y },
        ];
    }
    const my = (from.y + to.y) / 2;
    return [
        { x: from.x, y: from.y },
        { x: from.x + clearance, y: from.y },
        { x: from.x + clearance, y: my },
        { x: to.x - clearance, y: my },
        { x: to.x - clearance, y: to.y },
        { x: to.x, y: to.y },
    ];
}

// Screen/world mapping: screen = world * zoom + pan.

export function worldToScreen(v: Viewport, p: Position): Position {
    return { x: p.x * v.zoom + v.pan.dx, y: p.y * v.zoom + v.pan.dy };
}

export function screenToWorld(v: Viewport, p: Position): Position {
    return { x: (p.x - v.pan.dx) / v.zoom, y: (p.y - v.pan.dy) / v.zoom };
}

export const ZOOM_MIN = 0.25;
export const ZOOM_MAX = 4.0;

export function clampZoom(zoom: number): number {
    return Math.min(Math.max(zoom, ZOOM_MIN), ZOOM_MAX);
}

// Zoom keeping the given screen point fixed.
export function zoomAt(v: Viewport, screen: Position, factor: number): Viewport {
    const zoom = clampZoom(v.zoom * factor);
    const applied = zoom / v.zoom;
    return {
        zoom,
        pan: {
            dx: screen.x - (screen.x - v.pan.dx) * applied,
            dy: screen.y - (screen.y - v.pan.dy) * applied,
        },
    };
}
