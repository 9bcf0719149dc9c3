import { App } from "./app.js";

const mount = document.getElementById("app");
if (mount === null) {
    throw new Error("missing #app mount point");
}
new App(mount).start();
