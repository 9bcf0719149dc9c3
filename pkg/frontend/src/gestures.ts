// Pointer gesture recognition, kept free of DOM types so it can be
// driven directly in tests. The simulation screen feeds it raw pointer
// coordinates and reacts to the callbacks.

export interface GestureHandlers {
    onTap?: (x: number, y: number) => void;
    onDoubleTap?: (x: number, y: number) => void;
    onDragStart?: (x: number, y: number) => void;
    onDragMove?: (dx: number, dy: number, x: number, y: number) => void;
    onDragEnd?: (x: number, y: number) => void;
    onPinch?: (centerX: number, centerY: number, factor: number, dx: number, dy: number) => void;
    onPinchEnd?: () => void;
}

const TAP_SLOP = 8;
const DOUBLE_TAP_MS = 350;
const DOUBLE_TAP_RADIUS = 32;

interface TrackedPointer {
    startX: number;
    startY: number;
    x: number;
    y: number;
    spent: boolean;
}

export class GestureRecognizer {
    private readonly handlers: GestureHandlers;
    private readonly pointers = new Map<number, TrackedPointer>();
    private dragging = false;
    private pinching = false;
    private lastPinchDistance = 0;
    private lastPinchCenter = { x: 0, y: 0 };
    private lastTap: { x: number; y: number; at: number } | null = null;

    public constructor(handlers: GestureHandlers) {
        this.handlers = handlers;
    }

    public pointerDown(id: number, x: number, y: number): void {
        this.pointers.set(id, { startX: x, startY: y, x, y, spent: false });
        if (this.pointers.size === 2) {
            if (this.dragging) {
                this.dragging = false;
                this.handlers.onDragEnd?.(x, y);
            }
            this.pinching = true;
            const [a, b] = this.pair();
            this.lastPinchDistance = distance(a, b);
            this.lastPinchCenter = center(a, b);
        } else if (this.pointers.size > 2) {
            // A third finger aborts the pinch; ignore everything until
            // the slate is clean again.
            this.abortAll();
        }
    }

    public pointerMove(id: number, x: number, y: number): void {
        const p = this.pointers.get(id);
        if (p === undefined) {
            return;
        }
        p.x = x;
        p.y = y;
        if (this.pinching) {
            const [a, b] = this.pair();
            const dist = distance(a, b);
            const c = center(a, b);
            const factor = this.lastPinchDistance > 0 ? dist / this.lastPinchDistance : 1;
            this.handlers.onPinch?.(
                c.x,
                c.y,
                factor,
                c.x - this.lastPinchCenter.x,
                c.y - this.lastPinchCenter.y,
            );
            this.lastPinchDistance = dist;
            this.lastPinchCenter = c;
            return;
        }
        if (p.spent || this.pointers.size !== 1) {
            return;
        }
        if (!this.dragging) {
            const moved = Math.hypot(x - p.startX, y - p.startY);
            if (moved <= TAP_SLOP) {
                return;
            }
            this.dragging = true;
            this.handlers.onDragStart?.(p.startX, p.startY);
        }
        this.handlers.onDragMove?.(x - p.startX, y - p.startY, x, y);
    }

    public pointerUp(id: number, x: number, y: number, at: number = Date.now()): void {
        const p = this.pointers.get(id);
        this.pointers.delete(id);
        if (p === undefined) {
            return;
        }
        if (this.pinching) {
            if (this.pointers.size < 2) {
                this.pinching = false;
                this.handlers.onPinchEnd?.();
                // The finger that stays down must not turn into a tap.
                for (const rest of this.pointers.values()) {
                    rest.spent = true;
                }
            }
            return;
        }
        if (this.dragging) {
            this.dragging = false;
            this.handlers.onDragEnd?.(x, y);
            return;
        }
        if (p.spent) {
            return;
        }
        const last = this.lastTap;
        if (
            last !== null &&
            at - last.at <= DOUBLE_TAP_MS &&
            Math.hypot(x - last.x, y - last.y) <= DOUBLE_TAP_RADIUS
        ) {
            this.lastTap = null;
            this.handlers.onDoubleTap?.(x, y);
            return;
        }
        this.lastTap = { x, y, at };
        this.handlers.onTap?.(x, y);
    }

    public pointerCancel(id: number): void {
        this.pointers.delete(id);
        if (this.pointers.size < 2 && this.pinching) {
            this.pinching = false;
            this.handlers.onPinchEnd?.();
        }
        if (this.dragging && this.pointers.size === 0) {
            this.dragging = false;
        }
    }

    private pair(): [TrackedPointer, TrackedPointer] {
        const values = [...this.pointers.values()];
        return [values[0]!, values[1]!];
    }

    private abortAll(): void {
        if (this.pinching) {
            this.pinching = false;
            this.handlers.onPinchEnd?.();
        }
        this.dragging = false;
        for (const p of this.pointers.values()) {
            p.spent = true;
        }
    }
}

function distance(a: { x: number; y: number }, b: { x: number; y: number }): number {
    return Math.hypot(a.x - b.x, a.y - b.y);
}

function center(a: { x: number; y: number }, b: { x: number; y: number }): { x: number; y: number } {
    return { x: (a.x + b.x) / 2, y: (a.y + b.y) / 2 };
}
