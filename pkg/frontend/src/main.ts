import { install } from "./app.js";

install(document.querySelector("#app") as HTMLElement);
