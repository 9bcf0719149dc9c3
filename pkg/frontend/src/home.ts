export interface HomeHandlers {
    onNew: () => void;
    onHelp: () => void;
    onExit: () => void;
}

export class HomeScreen {
    public readonly root: HTMLElement;

    public constructor(handlers: HomeHandlers) {
        this.root = document.createElement("div");
        this.root.className = "screen home-screen";

        const title = document.createElement("h1");
        title.textContent = "gateboard";

        const tagline = document.createElement("p");
        tagline.className = "tagline";
        tagline.textContent = "Build small logic circuits, flip the switches, watch the lamps.";

        const menu = document.createElement("div");
        menu.className = "home-menu";
        menu.append(
            menuButton("New Circuit", "home-new", handlers.onNew),
            menuButton("Help", "home-help", handlers.onHelp),
            menuButton("Exit", "home-exit", handlers.onExit),
        );

        this.root.append(title, tagline, menu);
    }
}

function menuButton(label: string, cls: string, onClick: () => void): HTMLButtonElement {
    const button = document.createElement("button");
    button.textContent = label;
    button.className = `menu-button ${cls}`;
    button.addEventListener("click", onClick);
    return button;
}
